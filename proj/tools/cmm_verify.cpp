#include "cmm/cli/cli.hpp"

int main(int argc, char** argv)
{
    return cmm::cli::run(argc, argv);
}
