#pragma once

#include <string>
#include <vector>

namespace scmsweep {

/// Entry point behind the scmsweep binary. Returns 0 on success, 2 on
/// argument or configuration errors, 3 when every requested solve was
/// refused as ill-conditioned.
int cli_main(const std::vector<std::string>& args);

}  // namespace scmsweep
