#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace valkit {

// A purely periodic continued fraction [a1; a2, ..., al] repeating, stored as
// its period. All letters are >= 1. The period is *not* assumed minimal:
// (1,1) and (1,1,1,1) denote the same irrational (phi) but different words;
// cycle sums over (1,1,1,1) are twice those over (1,1), which is harmless
// because every quantity we ever form is a ratio of two such sums.
using Word = std::vector<int>;

// Throws domain_error unless w is nonempty with all letters >= 1.
void validate_word(const Word& w);

// Reversed period: the opposite irrational w_op = [al; a_{l-1}, ..., a1].
Word opposite(const Word& w);

// Cyclic shift starting at a_i, 1-based: rotation(w, 1) = w,
// rotation(w, i) = [a_i, ..., a_l, a_1, ..., a_{i-1}]. Requires 1 <= i <= l.
Word rotation(const Word& w, std::size_t i);

// Concatenation of periods (the tree-building product on words).
Word conjunction(const Word& w1, const Word& w2);

// Duplicate once if the length is odd, so the word matrix T^{a1} V^{a2} ...
// closes with a V factor. Even-length words pass through unchanged.
Word even_form(const Word& w);

bool is_markov_word(const Word& w);  // all letters in {1,2}?

std::string word_str(const Word& w);  // "[2,2,1,1]"

// Binary tree of Markov words. The root (2,2,1,1) sits between the boundary
// words (1,1) and (2,2); each node stores the pair of neighbor words whose
// conjunction it is. left child of a node with neighbors (L, R):
//   word = node.word ++ L, neighbors (L, node.word);
// right child: word = R ++ node.word, neighbors (node.word, R).
struct MarkovNode {
    Word word;
    int depth = 0;
    Word left_neighbor, right_neighbor;
    std::unique_ptr<MarkovNode> left, right;
};

// Full tree down to `depth` (root has depth 0): 2^(depth+1) - 1 nodes.
std::unique_ptr<MarkovNode> markov_tree(int depth);

// Breadth-first, left to right within each level.
std::vector<const MarkovNode*> flatten(const MarkovNode& root);

}  // namespace valkit
