#pragma once

namespace hypfib {

// Exit codes: 0 success, 2 invalid input, 3 budget refusal.
int Run(int argc, char** argv);

}  // namespace hypfib
