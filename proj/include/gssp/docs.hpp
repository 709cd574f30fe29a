#ifndef GSSP_DOCS_HPP
#define GSSP_DOCS_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gssp/classify.hpp"
#include "gssp/forcing.hpp"
#include "gssp/refute.hpp"

namespace gssp {

// Self-contained structured-text documents: each carries its graph so the
// replay side needs no other inputs. Parse errors throw std::invalid_argument.

nlohmann::json witness_doc(const Witness& w);
Witness witness_from_doc(const nlohmann::json& j);

nlohmann::json certificate_doc(const ForcingCertificate& c);
ForcingCertificate certificate_from_doc(const nlohmann::json& j);

nlohmann::json verdict_doc(const Graph& g, const Verdict& v, std::uint64_t seed);

}  // namespace gssp

#endif
