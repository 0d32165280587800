#include <iostream>
int count_pos(const std::vector<double> &xs) {
    int c = 0;
    for (const auto &x : xs) if (x > 0) ++c;
    std::cout << "positives: " << c << std::endl;
    return c;
}
