int main() { int r[2800 + 1]; }
