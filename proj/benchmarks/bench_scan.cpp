// Compares the serial reference scan against the OpenMP-sharded kernel and
// verifies that both produce the same classification.
//
//   ./asmg_bench [n] [jobs] [repeats]

#include <chrono>
#include <iostream>
#include <string>
#include <thread>

#include "asmg/enumerate.hpp"

namespace {

double run_ms(int n, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = asmg::classify(n, jobs);
    const auto stop = std::chrono::steady_clock::now();
    if (report.total_asm_count == 0) std::cerr << "empty scan?\n";
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::stoi(argv[1]) : 7;
    const unsigned hw = std::thread::hardware_concurrency();
    const int jobs = argc > 2 ? std::stoi(argv[2]) : (hw > 0 ? static_cast<int>(hw) : 2);
    const int repeats = argc > 3 ? std::stoi(argv[3]) : 3;

    const auto serial = asmg::classify(n, 1);
    const auto sharded = asmg::classify(n, jobs);
    if (!(serial == sharded)) {
        std::cerr << "FAIL: sharded scan differs from the serial reference\n";
        return 1;
    }
    std::cout << "n = " << n << ", " << serial.total_asm_count << " matrices, results identical\n";

    double best_serial = 1e18, best_sharded = 1e18;
    for (int r = 0; r < repeats; ++r) {
        best_serial = std::min(best_serial, run_ms(n, 1));
        best_sharded = std::min(best_sharded, run_ms(n, jobs));
    }
    std::cout << "serial reference:  " << best_serial << " ms\n";
    std::cout << "sharded (" << jobs << " jobs): " << best_sharded << " ms\n";
    std::cout << "speedup: " << best_serial / best_sharded << "x\n";
    return 0;
}
