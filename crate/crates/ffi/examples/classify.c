#include <stdio.h>
#include "latpoly.h"

int main(int argc, char **argv) {
    const char *name = argc > 1 ? argv[1] : "counterexample5d";
    LatpolyPolytope *p = NULL;
    if (latpoly_polytope_builtin(name, &p) != LATPOLY_STATUS_OK) {
        fprintf(stderr, "%s\n", latpoly_last_error_message());
        return 1;
    }
    char *json = NULL;
    LatpolyStatus st = latpoly_classify_json(p, &json);
    if (st == LATPOLY_STATUS_OK) {
        printf("%s\n", json);
        latpoly_string_free(json);
    } else {
        fprintf(stderr, "%s\n", latpoly_last_error_message());
    }
    latpoly_polytope_free(p);
    return st;
}
