#pragma once

#include <string>
#include <vector>

namespace xyfse {

// Full-precision decimal formatting (%.17g): round-trips any double, and is
// the single formatter used for cache files and CSV output so that reruns are
// byte-identical.
std::string fmt_g17(double v);

// SHA-1 hex digest of a byte string; used to fingerprint correlator cache
// headers inside run manifests.
std::string sha1_hex(const std::string& data);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

}  // namespace xyfse
