#define VERSION_MAJOR 1
int version(void);
