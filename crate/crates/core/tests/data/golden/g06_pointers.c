int sum_ptr(int *p, int n) {
    int s = 0;
    int *end = p + n;
    while (p != end) s += *p++;
    return s;
}
