#include "specbasis/cli.hpp"

int main(int argc, char** argv) {
    return specbasis::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
