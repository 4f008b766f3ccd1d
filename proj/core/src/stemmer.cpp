#include "voicecmd/stemmer.hpp"

#include <algorithm>

// Suffix stripping after M.F. Porter, "An Algorithm for Suffix Stripping"
// (1980). The structure below follows the reference implementation: b_ is
// the word buffer, k_ the offset of its last letter and j_ the stem offset
// set by ends().

namespace voicecmd {

namespace {

class Porter {
 public:
  explicit Porter(std::string word) : b_(std::move(word)), k_(static_cast<int>(b_.size()) - 1) {}

  std::string run() {
    if (k_ <= 1) return b_;
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    b_.resize(static_cast<size_t>(k_) + 1);
    return b_;
  }

 private:
  std::string b_;
  int k_;
  int j_ = 0;

  bool cons(int i) const {
    switch (b_[static_cast<size_t>(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of consonant-vowel sequences in [0, j_].
  int measure() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i)
      if (!cons(i)) return true;
    return false;
  }

  bool double_consonant(int i) const {
    if (i < 1) return false;
    if (b_[static_cast<size_t>(i)] != b_[static_cast<size_t>(i) - 1]) return false;
    return cons(i);
  }

  // consonant-vowel-consonant ending at i, last consonant not w, x or y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char c = b_[static_cast<size_t>(i)];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view s) {
    int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (b_.compare(static_cast<size_t>(k_ + 1 - len), static_cast<size_t>(len), s) != 0) return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.resize(static_cast<size_t>(j_) + 1);
    b_.append(s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void replace_when_stem(std::string_view s) {
    if (measure() > 0) set_to(s);
  }

  void step1ab() {
    if (b_[static_cast<size_t>(k_)] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (b_[static_cast<size_t>(k_) - 1] != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (measure() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      b_.resize(static_cast<size_t>(k_) + 1);
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_consonant(k_)) {
        char c = b_[static_cast<size_t>(k_)];
        if (c != 'l' && c != 's' && c != 'z') --k_;
      } else {
        j_ = k_;
        if (measure() == 1 && cvc(k_)) set_to("e");
      }
    }
    b_.resize(static_cast<size_t>(k_) + 1);
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[static_cast<size_t>(k_)] = 'i';
  }

  void step2() {
    if (k_ < 1) return;
    switch (b_[static_cast<size_t>(k_) - 1]) {
      case 'a':
        if (ends("ational")) { replace_when_stem("ate"); break; }
        if (ends("tional")) { replace_when_stem("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { replace_when_stem("ence"); break; }
        if (ends("anci")) { replace_when_stem("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { replace_when_stem("ize"); break; }
        break;
      case 'l':
        if (ends("abli")) { replace_when_stem("able"); break; }
        if (ends("alli")) { replace_when_stem("al"); break; }
        if (ends("entli")) { replace_when_stem("ent"); break; }
        if (ends("eli")) { replace_when_stem("e"); break; }
        if (ends("ousli")) { replace_when_stem("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { replace_when_stem("ize"); break; }
        if (ends("ation")) { replace_when_stem("ate"); break; }
        if (ends("ator")) { replace_when_stem("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { replace_when_stem("al"); break; }
        if (ends("iveness")) { replace_when_stem("ive"); break; }
        if (ends("fulness")) { replace_when_stem("ful"); break; }
        if (ends("ousness")) { replace_when_stem("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { replace_when_stem("al"); break; }
        if (ends("iviti")) { replace_when_stem("ive"); break; }
        if (ends("biliti")) { replace_when_stem("ble"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (b_[static_cast<size_t>(k_)]) {
      case 'e':
        if (ends("icate")) { replace_when_stem("ic"); break; }
        if (ends("ative")) { replace_when_stem(""); break; }
        if (ends("alize")) { replace_when_stem("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { replace_when_stem("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { replace_when_stem("ic"); break; }
        if (ends("ful")) { replace_when_stem(""); break; }
        break;
      case 's':
        if (ends("ness")) { replace_when_stem(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 1) return;
    bool matched = false;
    switch (b_[static_cast<size_t>(k_) - 1]) {
      case 'a':
        matched = ends("al");
        break;
      case 'c':
        matched = ends("ance") || ends("ence");
        break;
      case 'e':
        matched = ends("er");
        break;
      case 'i':
        matched = ends("ic");
        break;
      case 'l':
        matched = ends("able") || ends("ible");
        break;
      case 'n':
        matched = ends("ant") || ends("ement") || ends("ment") || ends("ent");
        break;
      case 'o':
        matched = (ends("ion") && j_ >= 0 &&
                   (b_[static_cast<size_t>(j_)] == 's' || b_[static_cast<size_t>(j_)] == 't')) ||
                  ends("ou");
        break;
      case 's':
        matched = ends("ism");
        break;
      case 't':
        matched = ends("ate") || ends("iti");
        break;
      case 'u':
        matched = ends("ous");
        break;
      case 'v':
        matched = ends("ive");
        break;
      case 'z':
        matched = ends("ize");
        break;
      default:
        break;
    }
    if (matched && measure() > 1) {
      k_ = j_;
      b_.resize(static_cast<size_t>(k_) + 1);
    }
  }

  void step5() {
    j_ = k_;
    if (b_[static_cast<size_t>(k_)] == 'e') {
      int a = measure();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    j_ = k_;
    if (b_[static_cast<size_t>(k_)] == 'l' && double_consonant(k_) && measure() > 1) --k_;
    b_.resize(static_cast<size_t>(k_) + 1);
  }
};

bool all_lower_alpha(std::string_view w) {
  return !w.empty() &&
         std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

}  // namespace

std::string stem(std::string_view word) {
  std::string current(word);
  if (!all_lower_alpha(current)) return current;
  for (int pass = 0; pass < 16; ++pass) {
    std::string next = Porter(current).run();
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace voicecmd
