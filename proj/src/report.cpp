// Deterministic report plumbing (see report.hpp).
#include "qhh/report.hpp"

#include <cstdint>

namespace qhh {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
  return out;
}

ojson report_skeleton(const std::string& command) {
  ojson j;
  j["tool"] = "qhh";
  j["version"] = "0.1.0";
  j["command"] = command;
  return j;
}

std::string finalize_report(ojson j) {
  j.erase("digest");
  j["digest"] = fnv1a_hex(j.dump(2));
  return j.dump(2) + "\n";
}

}  // namespace qhh
