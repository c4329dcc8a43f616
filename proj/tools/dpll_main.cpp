// Reads a DIMACS file and prints a verdict in the competition format.

#include <fstream>
#include <iostream>

#include "satforge/oracle.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " FILE.cnf\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << '\n';
        return 2;
    }
    try {
        auto cnf = satforge::parse_dimacs(in);
        auto model = satforge::mini_dpll(cnf);
        if (!model) {
            std::cout << "s UNSATISFIABLE\n";
            return 20;
        }
        std::cout << "s SATISFIABLE\nv";
        for (auto l : *model) std::cout << ' ' << l;
        std::cout << " 0\n";
        return 10;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
