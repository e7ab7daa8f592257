#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace tilecs {

// Data files compiled into the library (generated at configure time from data/).
struct EmbeddedFile {
  std::string_view name;  // file stem, e.g. "cairo"
  std::string_view content;
};

const std::vector<EmbeddedFile>& embedded_tilings();
const std::vector<EmbeddedFile>& embedded_groups();
const std::vector<EmbeddedFile>& embedded_annotations();

std::optional<std::string_view> find_embedded(const std::vector<EmbeddedFile>& files, std::string_view name);

}  // namespace tilecs
