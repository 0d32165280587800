template <typename T>
T dot(const std::vector<T> &a, const std::vector<T> &b) {
    T s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
