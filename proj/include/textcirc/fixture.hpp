// Copyright 2026 The textcirc Authors
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

/**
 * @file fixture.hpp
 *
 * The bundled English/Urdu lexicon, identical to fixtures/lex.tsv. It backs
 * label sampling and the command-line defaults.
 */
#pragma once

#include <string_view>

#include "textcirc/lexicon.hpp"
#include "textcirc/lexicon_io.hpp"

namespace textcirc {

inline constexpr std::string_view kFixtureLexiconTsv = R"tsv(# English	Urdu	category
John	John	NP
Fatima	Fatima	NP
books	kitabein	NP
student	talib-e-ilm	NP
teacher	ustad	NP
Ali	Ali	NP
Sara	Sara	NP
he	woh	NP
him	us	NP
who	jo	NP
smiles	muskurata hai	IV
teach	parhate huwe	IV
sleeps	sota hai	IV
dances	nachta hai	IV
laughs	hansta hai	IV
reads	parhta hai	TV
loves	pyar karta hai	TV
helps	madad karta hai	TV
knows	janta hai	TV
young	nojawan	ADJ
honest	imandar	ADJ
old	boorha	ADJ
happy	khush	ADJ
passionately	shauq se	ADV
quickly	jaldi se	ADV
quietly	khamoshi se	ADV
at	ki taraf	ADP
with	ke saath	ADP
near	ke qareeb	ADP
sees	dekhta hai	SCV
hears	sunta hai	SCV
and	aur	CNJ
but	lekin	CNJ
is	hai	COPULA
)tsv";

inline const Lexicon& fixture_lexicon() {
  static const Lexicon lex = parse_lexicon(kFixtureLexiconTsv);
  return lex;
}

}  // namespace textcirc
