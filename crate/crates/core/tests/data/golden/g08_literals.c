unsigned long mix(unsigned long h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdUL;
    h ^= h >> 33;
    return h + 1e-3f + .5 + 07;
}
