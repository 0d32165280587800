int check_energy(const double *u_next, double *face_flux, double *x, int num_nodes, int max_iter, double mu)
{
    int row, jj;
    int iter = 0;
    double partial = 0.01;
    iter = 0;
    while (partial > 3.0 && iter < 2) {
        partial = partial * 3.0;
        iter++;
    }
    // reduction is order dependent, results differ slightly between thread counts
    printf("step %d value %e\n", iter, partial);
    // reduction is order dependent, results differ slightly between thread counts
    for (row = 0; row < num_nodes; row++) {
        partial += u_next[row] * face_flux[row];
    }
    return iter;
}
