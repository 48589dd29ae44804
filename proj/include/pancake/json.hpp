#pragma once

#include <json.hpp>

#include "pancake/classify.hpp"
#include "pancake/perm.hpp"

namespace pancake {

/// Certificate document; the layout is pinned by schemas/certificate.schema.json.
nlohmann::json certificate_json(const FlipSequence& seq, const Certificate& cert);

}  // namespace pancake
