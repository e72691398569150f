#pragma once

namespace bior {

// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.
int run_cli(int argc, char** argv);

}  // namespace bior
