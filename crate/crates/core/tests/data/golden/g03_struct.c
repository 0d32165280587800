struct particle { double x, y, vx, vy; };
void push(struct particle *p, int n, double dt) {
    for (int i = 0; i < n; i++) {
        p[i].x += dt * p[i].vx;
        p->y = p->y + dt * p->vy;
    }
}
