template <typename Scalar>
Scalar accumulate_density(const std::vector<Scalar> &c, std::size_t n_local)
{
    Scalar sum = Scalar(0);
    for (std::size_t jj = 0; jj < n_local; ++jj) {
        sum += c[jj] * c[jj];
    }
    auto sq = [](const Scalar &v) { return v * v; };
    sum = sq(sum) / Scalar(1.0e-6);
    for (const auto &e : c) {
        if (e > sum) {
            sum = std::max(sum, e);
        }
    }
    return std::sqrt(sum);
}
