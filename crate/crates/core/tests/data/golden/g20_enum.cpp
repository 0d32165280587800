enum class Mode { Fast, Exact };
int cost(Mode m) { return m == Mode::Fast ? 1 : 10; }
