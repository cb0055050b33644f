// Copyright 2026 The Axmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AXMINE_TEXT_HPP_
#define AXMINE_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace axmine {

// ASCII-only case folding; multi-byte sequences (diacritics etc.) pass
// through untouched.
std::string to_lower(std::string_view s);

// Whitespace split with runs collapsed; no empty tokens.
std::vector<std::string> split_ws(std::string_view s);

// Tab split, empty fields preserved.
std::vector<std::string> split_tsv(std::string_view line);

std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

// Lowercased, single-space-joined form used as lexicalisation lookup key.
std::string normalize_phrase(std::string_view s);

std::string_view trim(std::string_view s);

// Sentence tokenizer for hypernym extraction: whitespace split, ASCII
// lowercase, punctuation stripped at token edges. A trailing or standalone
// comma survives as its own "," token so comma-anchored rules can fire.
std::vector<std::string> tokenize_sentence(std::string_view raw);

// N-Triples literal escaping (\\, \", \n, \r, \t). Other backslash
// sequences are kept verbatim so unparsed input round-trips byte-exactly.
std::string nt_escape(std::string_view s);
std::string nt_unescape(std::string_view s);

// Shortest round-trip decimal form; stable across runs.
std::string format_double(double v);

}  // namespace axmine

#endif  // AXMINE_TEXT_HPP_
