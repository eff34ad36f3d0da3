#pragma once

namespace maskmat {

// Full command-line surface. Exit codes: 0 = safe/success, 1 = unsafe,
// 2 = usage or input error.
int cli_main(int argc, char** argv);

}  // namespace maskmat
