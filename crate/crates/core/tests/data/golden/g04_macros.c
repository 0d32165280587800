#define SQR(x) ((x) * (x))
#define N 64
double energy(const double *v) {
    double e = 0.0;
    for (int i = 0; i < N; ++i)
        e += SQR(v[i]);
    return 0.5 * e;
}
