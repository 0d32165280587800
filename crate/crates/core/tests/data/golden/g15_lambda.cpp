#include <algorithm>
void sort_abs(std::vector<int> &v) {
    std::sort(v.begin(), v.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
}
