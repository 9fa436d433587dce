#include "planewalk/cli.h"

int main(int argc, char** argv) { return planewalk::run_cli(argc, argv); }
