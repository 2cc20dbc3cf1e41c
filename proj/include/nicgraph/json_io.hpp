#pragma once

#include "json.hpp"
#include "nicgraph/homophily.hpp"
#include "nicgraph/nic.hpp"
#include "nicgraph/oracle.hpp"
#include "nicgraph/synth.hpp"

namespace nicgraph {

using Json = nlohmann::json;

// Matrices are written row-major as nested arrays. Undefined rows of z are
// written as null.

void to_json(Json& j, const Matrix& m);
void from_json(const Json& j, Matrix& m);

/// A LabelModel document needs p and q; z may be omitted when c is given, in
/// which case z is derived from c. max_degree and num_classes are inferred
/// from the shapes when absent.
void to_json(Json& j, const LabelModel& m);
void from_json(const Json& j, LabelModel& m);

void to_json(Json& j, const NicConventions& c);
void from_json(const Json& j, NicConventions& c);
void to_json(Json& j, const NicReport& r);
void from_json(const Json& j, NicReport& r);

void to_json(Json& j, const ExactMiResult& r);
void from_json(const Json& j, ExactMiResult& r);

void to_json(Json& j, const HomophilyReport& r);
void from_json(const Json& j, HomophilyReport& r);

void to_json(Json& j, const SynthConfig& cfg);
void from_json(const Json& j, SynthConfig& cfg);

void to_json(Json& j, const GaussianMixtureModel& gmm);
void from_json(const Json& j, GaussianMixtureModel& gmm);

/// Reads a whole JSON file; parse failures become FormatMismatch errors.
Json read_json_file(const std::filesystem::path& path);

}  // namespace nicgraph
