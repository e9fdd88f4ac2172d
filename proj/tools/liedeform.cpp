#include "liedeform/app.hpp"

int main(int argc, char** argv) { return liedeform::app::cli_main(argc, argv); }
