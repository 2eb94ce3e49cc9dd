#include <string>
#include <vector>

#include "wheeltrace/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wheeltrace::run_cli(args);
}
