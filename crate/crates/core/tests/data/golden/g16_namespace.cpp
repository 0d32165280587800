namespace phys {
constexpr double kB = 1.380649e-23;
double thermal(double T) { return kB * T; }
}
