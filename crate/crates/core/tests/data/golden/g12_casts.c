#include <stdlib.h>
double *alloc(size_t n) {
    double *p = (double *) calloc(n, sizeof *p);
    if (!p) abort();
    return p;
}
