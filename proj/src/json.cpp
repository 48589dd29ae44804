#include "pancake/json.hpp"

#include "pancake/text_format.hpp"

namespace pancake {

nlohmann::json certificate_json(const FlipSequence& seq, const Certificate& cert) {
  nlohmann::json j;
  j["n"] = cert.n;
  j["sequence"] = format_sequence(seq);
  j["sorts"] = cert.sorts;
  j["length"] = cert.length;
  j["bound"] = cert.bound;
  nlohmann::json classes = nlohmann::json::array();
  for (SeqClass c : cert.classes) classes.push_back(std::string(to_string(c)));
  j["classes"] = classes;
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& ph : cert.phases) phases.push_back(ph);
  j["phases"] = phases;
  if (cert.checkpoint) {
    j["checkpoint"] = {{"stack", format_stack(cert.checkpoint->stack)},
                       {"kind", std::string(to_string(cert.checkpoint->kind))}};
  } else {
    j["checkpoint"] = nullptr;
  }
  j["central_flip"] = cert.central_flip ? nlohmann::json(*cert.central_flip) : nlohmann::json(nullptr);
  j["failures"] = cert.failures;
  return j;
}

}  // namespace pancake
