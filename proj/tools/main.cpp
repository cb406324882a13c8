#include <atomic>
#include <csignal>
#include <iostream>

#include "ordcalc/cli.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

void handle_signal(int) { g_interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);
    ordcalc::install_stop_flag(&g_interrupted);
    return ordcalc::run_cli(argc, argv, std::cout, std::cerr);
}
