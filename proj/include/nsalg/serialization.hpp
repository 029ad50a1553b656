#ifndef NSALG_SERIALIZATION_HPP
#define NSALG_SERIALIZATION_HPP

#include <json.hpp>

#include "nsalg/field_tensor.hpp"
#include "nsalg/ideal_engine.hpp"
#include "nsalg/tensor_space.hpp"

namespace nsalg {

// JSON schemas (documented in docs/formats.md). Keys keep insertion order so
// identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json poly_to_json(const PolyQ& p);
PolyQ poly_from_json(const Json& j);

Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

Json nf_elem_to_json(const NFElement& e);
NFElement nf_elem_from_json(const Json& j, const FieldPtr& f);

Json descriptor_to_json(const DescriptorPtr& d);
DescriptorPtr descriptor_from_json(const Json& j);

Json finop_to_json(const FinOp& f);
FinOp finop_from_json(const Json& j, const FieldPtr& entry_field);

Json alg_elem_to_json(const AlgElement& a);
AlgElement alg_elem_from_json(const Json& j, const DescriptorPtr& d);

Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j, const DescriptorPtr& da, const DescriptorPtr& db);

Json elementary_to_json(const ElementaryOperator& op);
ElementaryOperator elementary_from_json(const Json& j, const DescriptorPtr& d);

Json ring_element_to_json(const RingElement& e);

Json verdict_to_json(const AdmissibilityVerdict& v);
Json witness_to_json(const WitnessRecord& w);
Json classification_to_json(const Classification& c);
Json extremal_to_json(const ExtremalReport& r);

/// Field tensor report per the CLI interface: field-ness, component count and
/// degrees, zero divisors when the ring splits.
Json field_tensor_report(const FieldTensorRing& ring);

Json certificate_to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const Json& j, const DescriptorPtr& da,
                                           const DescriptorPtr& db);

}  // namespace nsalg

#endif
