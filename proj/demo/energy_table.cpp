// Prints the Parseval-Taylor energy table of a built-in signal and shows the
// cumulative sums closing in on the quadrature energy.

#include <tb/tb.hpp>

#include <cstdio>

int main(int argc, char** argv) {
    const char* name = argc > 1 ? argv[1] : "gaussian";
    const tb::signal& s = tb::builtin(name);

    const long levels = 13;
    tb::energy_decomposition ed = tb::parseval_taylor(s, 0.0, levels - 1);

    std::printf("signal: %s    E = %.12f\n\n", s.name.c_str(), ed.quadrature_energy);
    std::printf("%4s %18s %18s %18s %18s\n", "n", "c_n", "c~_n", "DE_n", "E_n");
    for (long n = 0; n < levels; ++n) {
        auto i = static_cast<std::size_t>(n);
        std::printf("%4ld %18.10f %18.10f %18.10f %18.10f\n", n, ed.c[i], ed.c_dual[i],
                    ed.de[i], ed.cumulative[i]);
    }
    std::printf("\ngap after %ld levels: %.3e\n", levels,
                std::fabs(ed.cumulative.back() - ed.quadrature_energy));
    return 0;
}
