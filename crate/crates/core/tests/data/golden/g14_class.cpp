class Grid {
public:
    explicit Grid(int n) : n_(n), data_(n * n, 0.0) {}
    double &at(int i, int j) { return data_[i * n_ + j]; }
private:
    int n_;
    std::vector<double> data_;
};
