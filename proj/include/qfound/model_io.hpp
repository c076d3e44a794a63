// model_io.hpp
// JSON serialization for finite ontological models (with optional bindings
// to named quantum objects) and for Gaussian macrostates.
//
// Model document:
//   {
//     "lambda_count": N,
//     "preparations": { "label": [p(0), ..., p(N-1)], ... },
//     "responses":    { "label": [[per-outcome probs] per lambda], ... },
//     "bindings": {                       // optional
//       "preparations": { "label": "|0>" },
//       "measurements": { "label": "z" }
//     }
//   }
// Recognized state names: |0>, |1>, |+>, |->, |+i>, |-i>, hardy:M:j.
// Recognized basis names: z, x, y, hardy:M:k (basis listing state k first).

#pragma once

#include <string>

#include <json.hpp>

#include "qfound/ontology.hpp"
#include "qfound/phase_space.hpp"

namespace qfound::io {

using Json = nlohmann::ordered_json;

struct LoadedModel {
  ontology::FiniteOntologicalModel model;
  ontology::QuantumAssignment assignment;  // empty when no bindings present
};

hilbert::StateVector parse_state_name(const std::string& name);
hilbert::MeasurementBasis parse_basis_name(const std::string& name);

Json model_to_json(const ontology::FiniteOntologicalModel& model);
ontology::FiniteOntologicalModel model_from_json(const Json& j);

// Reads and validates a model document; error messages carry the offending
// JSON path or table row.
LoadedModel load_model(const std::string& path);

Json gaussian_to_json(const phase::GaussianMacrostate& state);
phase::GaussianMacrostate gaussian_from_json(const Json& j);

}  // namespace qfound::io
