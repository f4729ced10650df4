#pragma once

namespace rainbow {

// Command-line surface (generate / solve / verify / simulate / reduce).
// Exit codes: 0 success or verified, 1 no full matching or rejected,
// 2 usage or runtime error.
int run_cli(int argc, const char* const* argv);

} // namespace rainbow
