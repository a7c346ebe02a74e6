// Deterministic machine-readable reports.
//
// Every CLI invocation emits one JSON document.  Nothing time- or
// machine-dependent goes into it (timings are stderr-only), so identical
// input and flags reproduce the document byte for byte; a trailing digest
// field seals the payload.
#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace qhh {

using ojson = nlohmann::ordered_json;

// FNV-1a 64-bit digest, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

// Skeleton with tool/version/command fields filled in.
ojson report_skeleton(const std::string& command);

// Appends "digest" (FNV-1a of the document without that field) and dumps
// with two-space indentation and a trailing newline.
std::string finalize_report(ojson j);

}  // namespace qhh
