#pragma once

#include <string>

#include "harmonia/persistence.hpp"

namespace harmonia {

// fnv-1a 64-bit hash, rendered as 16 lowercase hex digits
std::string fnv1a64_hex(const std::string& bytes);

struct document_options {
	std::string algorithm = "persistence";
	bool include_representatives = false;
	std::string input_hash;  // content hash of the input; empty to omit provenance
};

// stable-key json document for a barcode; exact rational endpoints as strings,
// null death for essential bars
std::string barcode_document_json(const barcode& bc, const document_options& opt);

// plain text: one "birth death" line per bar, a '#' header with dimension
std::string barcode_document_text(const barcode& bc);

// inverse of barcode_document_json; throws std::invalid_argument on malformed input
barcode parse_barcode_document(const std::string& json_text);

// deterministic svg: fixed canvas, bars in (birth, death) order, essential
// bars drawn with an arrowhead
std::string render_barcode_svg(const barcode& bc, const std::string& title);

}  // namespace harmonia
