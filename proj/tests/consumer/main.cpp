#include <incolor/colorers.hpp>
#include <incolor/generate.hpp>
#include <incolor/verify.hpp>

#include <iostream>

int main()
{
    const incolor::Graph g = incolor::make_random_maximal_outerplanar(30, 4);
    const auto r = incolor::color(g, 1);
    const bool ok = incolor::check_defective(g, r.coloring, 1).valid();
    std::cout << r.method << " k=" << r.k << (ok ? " valid\n" : " INVALID\n");
    return ok ? 0 : 1;
}
