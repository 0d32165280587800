/* leading comment */
int clamp(int v, int lo, int hi) // inline
{
    /* multi
       line */
    if (v < lo) return lo; // low
    if (v > hi) return hi;
    return v;
}
