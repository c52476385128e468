#include <cliquepoly/cli.hpp>

int main(int argc, char** argv) {
    return cliquepoly::cli::run(argc, argv);
}
