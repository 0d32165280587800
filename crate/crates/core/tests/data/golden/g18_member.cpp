double Solver::residual(const double *r, int n) const {
    double s = 0;
    for (int i = 0; i < n; ++i) s += r[i] * r[i];
    return std::sqrt(s) / this->scale_;
}
