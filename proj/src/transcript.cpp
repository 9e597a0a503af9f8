#include "intmin/transcript.hpp"

#include <json.hpp>

namespace intmin {

namespace {

const char* kind_name(CutKind k) {
  switch (k) {
    case CutKind::Add: return "add";
    case CutKind::Drop: return "drop";
    case CutKind::Terminate: return "terminate";
  }
  return "?";
}

}  // namespace

std::string transcript_to_json(const Transcript& t) {
  nlohmann::ordered_json j;
  j["counts"] = {{"soCalls", t.so_calls},
                 {"blocks", t.blocks},
                 {"dimReductions", t.dim_reductions},
                 {"newtonIters", t.newton_iters},
                 {"lllCalls", t.lll_calls}};
  j["phi"] = t.phi;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& b : t.block_events) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : b.steps)
      steps.push_back({{"step", s.step},
                       {"action", kind_name(s.action)},
                       {"rho", s.rho},
                       {"minSigma", s.min_sigma},
                       {"m", s.m}});
    blocks.push_back({{"dim", b.dim},
                      {"soCalls", b.so_calls},
                      {"terminated", b.terminated},
                      {"steps", std::move(steps)}});
  }
  j["blocks"] = std::move(blocks);
  nlohmann::ordered_json reds = nlohmann::ordered_json::array();
  for (const auto& r : t.reductions)
    reds.push_back({{"fromDim", r.from_dim},
                    {"normValue", r.norm_value},
                    {"gamma", r.gamma},
                    {"logRectVol", r.log_rect_vol},
                    {"logDetLattice", r.log_det_lattice},
                    {"phiAfter", r.phi_after}});
  j["reductions"] = std::move(reds);
  return j.dump();
}

}  // namespace intmin
