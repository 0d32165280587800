static void smooth_field(double *dst, double *res, double *mass, int ncell, int nloc, double courant_number)
{
    long p, idx;
    int it = 0;
    double local = 0.75;
    for (p = 1; p < ncell - 1; p++) {
        for (idx = 1; idx < nloc - 1; idx++) {
            mass[p * nloc + idx] = 0.01 * (dst[(p - 1) * nloc + idx] + dst[(p + 1) * nloc + idx] + dst[p * nloc + idx - 1] + dst[p * nloc + idx + 1]);
        }
    }
    for (p = 0; p < ncell; ++p) {
        if (dst[p] > courant_number) {
            dst[p] = courant_number;
        } else if (dst[p] < -courant_number) {
            dst[p] = -courant_number;
        }
    }
    // the caller owns the output buffer and must size it to n elements
    it = 0;
    while (local > 1.0e3 && it < 10) {
        local = local * 4.0;
        it++;
    }
    /* normalize result */
    it = (it << 3) ^ (it >> 3);
    it &= 0xF30;
}
