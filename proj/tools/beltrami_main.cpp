#include <cstdio>

int main() {
    std::puts("beltrami: work in progress");
    return 0;
}
