const char *banner() {
    return R"(line "one"
line two)";
}
