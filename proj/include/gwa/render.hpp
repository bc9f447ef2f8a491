#pragma once

#include <optional>
#include <string>

#include "gwa/picard.hpp"

namespace gwa {

/// Draw the coordinate line of simples for the session's case: doubled points
/// at Z (multiple), tripled points at Z (congruent), doubled points at Z and
/// Z+m interleaved (non-congruent). Optionally annotates a picard element's
/// action. Output is deterministic; svg uses a fixed viewport.
std::string render_simples(const GWAParameters& params, long window_lo, long window_hi,
                           const std::string& format,
                           const std::optional<PicardElement>& annotate = std::nullopt);

}  // namespace gwa
