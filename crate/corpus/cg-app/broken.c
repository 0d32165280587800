int broken(int n {
    for (;;) { if (n > ) }
    return n +;
