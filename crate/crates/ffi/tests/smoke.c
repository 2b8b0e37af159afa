#include <stdio.h>
#include <string.h>

#include "shiftaut.h"

int main(void) {
    ShiftautTable *t = NULL;
    const char *spec = "{\"model\":\"sturmian\",\"cf\":{\"period\":[1]}}";
    if (shiftaut_table_new(spec, 8, &t) != SHIFTAUT_STATUS_OK) {
        fprintf(stderr, "%s\n", shiftaut_last_error());
        return 1;
    }
    size_t p = 0;
    if (shiftaut_table_complexity(t, 8, &p) != SHIFTAUT_STATUS_OK || p != 9) {
        return 2;
    }
    bool in = true;
    if (shiftaut_table_contains(t, "11", &in) != SHIFTAUT_STATUS_OK || in) {
        return 3;
    }
    if (shiftaut_table_complexity(t, 9, &p) != SHIFTAUT_STATUS_DEPTH_EXCEEDED) {
        return 4;
    }
    char *json = NULL;
    if (shiftaut_profile_json(t, &json) != SHIFTAUT_STATUS_OK || strstr(json, "\"k_linear\":2") == NULL) {
        return 5;
    }
    shiftaut_string_free(json);
    shiftaut_table_free(t);
    printf("ok\n");
    return 0;
}
