#pragma once

// JSON form of tower certificates and verification by replay.

#include <string>
#include <vector>

#include "json.hpp"
#include "fbh/tower.hpp"

namespace fbh {

nlohmann::ordered_json certificate_to_json(const HeightCertificate& c);
HeightCertificate certificate_from_json(const nlohmann::ordered_json& j);

struct ReplayReport {
  bool ok = false;
  std::vector<std::string> mismatches;
  HeightCertificate replayed;
};

// Rebuilds the field and hypersurface, reruns the tower over the recorded
// levels and compares verdict, windows, witnesses and coboundary digests.
ReplayReport verify_certificate(const HeightCertificate& c);

}  // namespace fbh
