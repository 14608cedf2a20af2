// Copyright 2026 The toricnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORICNET_TESTS_CRN_CORPUS_HPP
#define TORICNET_TESTS_CRN_CORPUS_HPP

#include <string>
#include <vector>

namespace toricnet::testing {

struct CorpusEntry {
    std::string name;
    std::string text;
    // Hand-counted: complexes, linkage classes, stoichiometric rank.
    std::size_t n, l, s_rank;
};

inline const std::vector<CorpusEntry>& crn_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"triangle", "A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1\n", 3, 1, 2},
        {"one-way cycle", "A -> B : a\nB -> C : b\nC -> A : c\n", 3, 1, 2},
        {"quadratic chain", "2A <-> A + B : k1, k2\nA + B <-> 2B : k3, k4\n", 3, 1, 1},
        {"single", "A -> B : 1\n", 2, 1, 1},
        {"isomerization", "A <-> B : 2, 1\n", 2, 1, 1},
        {"dimerization", "A <-> 2A : 1, 1\n", 2, 1, 1},
        {"two 2-cycles", "A <-> B : 1, 1\nC <-> D : 1, 1\n", 4, 2, 2},
        {"shared species", "A <-> B : 1, 1\nA + C <-> D : 1, 1\n", 4, 2, 2},
        {"binding", "A + B <-> C : kon, koff\n", 2, 1, 1},
        {"enzyme", "S + E <-> ES : 1, 1\nES -> P + E : 1\n", 3, 1, 2},
        {"enzyme reversible", "S + E <-> ES : 1, 1\nES <-> P + E : 1, 1\n", 3, 1, 2},
        {"inflow outflow", "0 <-> A : 1, 1\n", 2, 1, 1},
        {"birth death pair", "0 <-> A : 1, 1\nB <-> 2B : 1, 1\n", 4, 2, 2},
        {"square", "A -> B : 1\nB -> C : 1\nC -> D : 1\nD -> A : 1\n", 4, 1, 3},
        {"lotka volterra", "A -> 2A : 1\nA + B -> 2B : 1\nB -> 0 : 1\n", 6, 3, 2},
        {"edelstein", "A <-> 2A : 1, 1\nA + B <-> C : 1, 1\nC <-> B : 1, 1\n", 5, 2, 2},
        {"three classes", "A <-> B : 1, 1\n2A <-> C : 1, 1\nA + B <-> 2C : 1, 1\n", 6, 3, 3},
        {"triangle plus", "A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1\nA + B <-> 2C : 1, 1\n", 5, 2, 2},
        {"cubic", "3A <-> 2A + B : 1, 1\n2A + B <-> A + 2B : 1, 1\nA + 2B <-> 3B : 1, 1\n", 4, 1, 1},
        {"star", "A <-> B : 1, 1\nA <-> C : 1, 1\nA <-> D : 1, 1\n", 4, 1, 3},
        {"split", "A -> B + C : 1\nB + C -> A : 1\nB -> C : 1\n", 4, 2, 2},
        {"brusselator", "0 <-> X : 1, 1\n2X + Y -> 3X : 1\nX -> Y : 1\n", 5, 2, 2},
        {"two species cycle", "2A -> A + B : 1\nA + B -> 2B : 1\n2B -> 2A : 1\n", 3, 1, 1},
        {"catalysis", "A + C <-> B + C : 1, 1\nC <-> 0 : 1, 1\n", 4, 2, 2},
    };
    return corpus;
}

}  // namespace toricnet::testing

#endif  // TORICNET_TESTS_CRN_CORPUS_HPP
