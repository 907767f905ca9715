#include <aztec/cli.hpp>

int main(int argc, char** argv) {
    return aztec::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
