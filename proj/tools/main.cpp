#include <string>
#include <vector>

#include "schurpress/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return schurpress::run_cli(args);
}
