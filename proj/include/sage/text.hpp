#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sage {

// Controls how two query strings are compared when deciding whether a rewrite
// actually changed anything. Defaults: cosmetic whitespace edits and Unicode
// encoding differences do not count as modifications, casing changes do.
struct NormalizationRules {
  bool trim = true;
  bool collapse_whitespace = true;
  bool unicode_nfc = true;
  bool case_insensitive = false;
};

// Applies, in order: NFC normalization, case folding (if enabled), then
// trim/collapse of ASCII whitespace.
std::string normalize_text(std::string_view text, const NormalizationRules& rules);

std::vector<std::string> whitespace_tokens(std::string_view text);

// Whitespace-token count, the approximation used for template-backend
// response-length accounting.
int count_tokens(std::string_view text);

std::string trim(std::string_view text);
std::string to_lower_ascii(std::string_view text);
bool is_blank(std::string_view text);

}  // namespace sage
