#include "valkit/words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "valkit/errors.hpp"

namespace valkit {

void validate_word(const Word& w) {
    if (w.empty()) throw domain_error("word must be nonempty");
    for (int a : w)
        if (a < 1) throw domain_error("word letters must be >= 1, got " + std::to_string(a));
}

Word opposite(const Word& w) {
    validate_word(w);
    return Word(w.rbegin(), w.rend());
}

Word rotation(const Word& w, std::size_t i) {
    validate_word(w);
    if (i < 1 || i > w.size())
        throw domain_error("rotation index out of range: " + std::to_string(i));
    Word out(w.begin() + (i - 1), w.end());
    out.insert(out.end(), w.begin(), w.begin() + (i - 1));
    return out;
}

Word conjunction(const Word& w1, const Word& w2) {
    validate_word(w1);
    validate_word(w2);
    Word out = w1;
    out.insert(out.end(), w2.begin(), w2.end());
    return out;
}

Word even_form(const Word& w) {
    validate_word(w);
    if (w.size() % 2 == 0) return w;
    return conjunction(w, w);
}

bool is_markov_word(const Word& w) {
    return !w.empty() &&
           std::all_of(w.begin(), w.end(), [](int a) { return a == 1 || a == 2; });
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
    os << ']';
    return os.str();
}

namespace {

void grow(MarkovNode& node, int max_depth) {
    if (node.depth >= max_depth) return;
    node.left = std::make_unique<MarkovNode>();
    node.left->word = conjunction(node.word, node.left_neighbor);
    node.left->depth = node.depth + 1;
    node.left->left_neighbor = node.left_neighbor;
    node.left->right_neighbor = node.word;
    grow(*node.left, max_depth);

    node.right = std::make_unique<MarkovNode>();
    node.right->word = conjunction(node.right_neighbor, node.word);
    node.right->depth = node.depth + 1;
    node.right->left_neighbor = node.word;
    node.right->right_neighbor = node.right_neighbor;
    grow(*node.right, max_depth);
}

}  // namespace

std::unique_ptr<MarkovNode> markov_tree(int depth) {
    if (depth < 0) throw domain_error("tree depth must be >= 0");
    if (depth > 16) throw domain_error("tree depth > 16 would need words of length > 10^5");
    auto root = std::make_unique<MarkovNode>();
    root->left_neighbor = {1, 1};
    root->right_neighbor = {2, 2};
    root->word = conjunction(root->right_neighbor, root->left_neighbor);  // (2,2,1,1)
    grow(*root, depth);
    return root;
}

std::vector<const MarkovNode*> flatten(const MarkovNode& root) {
    std::vector<const MarkovNode*> out;
    std::deque<const MarkovNode*> queue{&root};
    while (!queue.empty()) {
        const MarkovNode* n = queue.front();
        queue.pop_front();
        out.push_back(n);
        if (n->left) queue.push_back(n->left.get());
        if (n->right) queue.push_back(n->right.get());
    }
    return out;
}

}  // namespace valkit
