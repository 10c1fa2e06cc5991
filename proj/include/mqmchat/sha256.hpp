#pragma once

#include <string>
#include <string_view>

namespace mqmchat {

// SHA-256 digest as a lowercase hex string. Used for response-cache keys
// and for the config fingerprint embedded in reports.
std::string sha256_hex(std::string_view data);

}  // namespace mqmchat
