#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace spmvkit {

enum class FormatKind { Csr, Ellpack, Coo, Hybrid, Bcsr, Rgcsr };

inline std::string_view format_name(FormatKind kind) {
  switch (kind) {
    case FormatKind::Csr: return "csr";
    case FormatKind::Ellpack: return "ellpack";
    case FormatKind::Coo: return "coo";
    case FormatKind::Hybrid: return "hybrid";
    case FormatKind::Bcsr: return "bcsr";
    case FormatKind::Rgcsr: return "rgcsr";
  }
  return "?";
}

inline std::optional<FormatKind> parse_format(std::string_view name) {
  if (name == "csr") return FormatKind::Csr;
  if (name == "ellpack" || name == "ell") return FormatKind::Ellpack;
  if (name == "coo") return FormatKind::Coo;
  if (name == "hybrid" || name == "hyb") return FormatKind::Hybrid;
  if (name == "bcsr") return FormatKind::Bcsr;
  if (name == "rgcsr") return FormatKind::Rgcsr;
  return std::nullopt;
}

}  // namespace spmvkit
