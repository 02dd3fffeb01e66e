#include <cstdio>
#include "ginertia/verification.hpp"
using namespace ginertia;
int main() {
    auto r1 = check_theorem_disconnected_sweep(7);
    std::printf("%s | %s\n", r1.ok ? "OK" : "FAIL", r1.detail.c_str());
    auto r2 = check_theorem_main_sweep(7);
    std::printf("%s | %s\n", r2.ok ? "OK" : "FAIL", r2.detail.c_str());
    return (r1.ok && r2.ok) ? 0 : 1;
}
