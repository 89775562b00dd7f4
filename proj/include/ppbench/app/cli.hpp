#pragma once

namespace ppbench::app {

/// Entry point of the `ppbench` command line tool.
/// Returns 0 on success, 1 on usage errors and 2 on computation or I/O errors.
int cli_main(int argc, char** argv);

}  // namespace ppbench::app
