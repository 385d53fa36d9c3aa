#include "mackey/category.hpp"

#include <atomic>
#include <mutex>
#include <random>

namespace mackey {

struct AddCategory::Cache {
  using Block = std::vector<HomCombo>;
  explicit Cache(std::size_t n) : slots(n * n * n) {}
  std::mutex mutex;
  std::vector<std::atomic<const Block*>> slots;
  std::vector<std::unique_ptr<Block>> storage;
};

AddCategory::AddCategory(std::string name, std::vector<std::string> objects,
                         std::vector<std::vector<std::vector<std::string>>> hom_labels, std::vector<int> identities,
                         Composer composer)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      labels_(std::move(hom_labels)),
      identities_(std::move(identities)),
      composer_(std::move(composer)),
      cache_(std::make_shared<Cache>(objects_.size())) {
  const std::size_t n = objects_.size();
  if (labels_.size() != n || identities_.size() != n) throw Error("category: inconsistent object count");
  for (const auto& row : labels_)
    if (row.size() != n) throw Error("category: hom label table is not square");
  for (std::size_t a = 0; a < n; ++a)
    if (identities_[a] < 0 || identities_[a] >= hom_rank(static_cast<int>(a), static_cast<int>(a)))
      throw Error("category: identity index out of range");
}

int AddCategory::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<int>(i);
  return -1;
}

const HomCombo& AddCategory::compose(int a, int b, int c, int f, int g) const {
  const std::size_t n = objects_.size();
  const std::size_t key = (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c);
  const Cache::Block* block = cache_->slots[key].load(std::memory_order_acquire);
  if (block == nullptr) {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    block = cache_->slots[key].load(std::memory_order_acquire);
    if (block == nullptr) {
      const int rf = hom_rank(a, b);
      const int rg = hom_rank(b, c);
      auto fresh = std::make_unique<Cache::Block>(static_cast<std::size_t>(rf) * static_cast<std::size_t>(rg));
      for (int i = 0; i < rf; ++i)
        for (int j = 0; j < rg; ++j) (*fresh)[static_cast<std::size_t>(i * rg + j)] = composer_(a, b, c, i, j);
      block = fresh.get();
      cache_->storage.push_back(std::move(fresh));
      cache_->slots[key].store(block, std::memory_order_release);
    }
  }
  return (*block)[static_cast<std::size_t>(f * hom_rank(b, c) + g)];
}

void AddCategory::compose_into(int a, int b, int c, int f, int g, std::int64_t coeff, HomVector& out) const {
  for (const HomTerm& t : compose(a, b, c, f, g)) out(t.index) += coeff * t.coeff;
}

HomVector AddCategory::compose(int a, int b, int c, const HomVector& f, const HomVector& g) const {
  HomVector out = HomVector::Zero(hom_rank(a, c));
  for (int i = 0; i < f.size(); ++i) {
    if (f(i) == 0) continue;
    for (int j = 0; j < g.size(); ++j)
      if (g(j) != 0) compose_into(a, b, c, i, j, f(i) * g(j), out);
  }
  return out;
}

HomVector AddCategory::identity_vector(int a) const { return basis_vector(a, a, identity(a)); }

HomVector AddCategory::basis_vector(int a, int b, int index) const {
  HomVector v = HomVector::Zero(hom_rank(a, b));
  v(index) = 1;
  return v;
}

std::shared_ptr<const AddCategory> AddCategory::full_subcategory(std::shared_ptr<const AddCategory> parent,
                                                                 const std::vector<int>& objects, std::string name) {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<std::string>>> labels;
  std::vector<int> ids;
  for (int a : objects) {
    names.push_back(parent->object_name(a));
    ids.push_back(parent->identity(a));
    std::vector<std::vector<std::string>> row;
    for (int b : objects) row.push_back(parent->hom_labels(a, b));
    labels.push_back(std::move(row));
  }
  Composer composer = [parent, objects](int a, int b, int c, int f, int g) {
    return parent->compose(objects[static_cast<std::size_t>(a)], objects[static_cast<std::size_t>(b)],
                           objects[static_cast<std::size_t>(c)], f, g);
  };
  return std::make_shared<AddCategory>(std::move(name), std::move(names), std::move(labels), std::move(ids),
                                       std::move(composer));
}

bool AddCategory::check_laws(std::size_t budget, std::uint64_t seed) const {
  const int n = object_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int f = 0; f < hom_rank(a, b); ++f) {
        HomCombo expect{{f, 1}};
        if (compose(a, a, b, identity(a), f) != expect) return false;
        if (compose(a, b, b, f, identity(b)) != expect) return false;
      }

  auto associative = [&](int a, int b, int c, int d, int f, int g, int h) {
    HomVector left = HomVector::Zero(hom_rank(a, d));
    for (const HomTerm& t : compose(a, b, c, f, g)) compose_into(a, c, d, t.index, h, t.coeff, left);
    HomVector right = HomVector::Zero(hom_rank(a, d));
    for (const HomTerm& t : compose(b, c, d, g, h)) compose_into(a, b, d, f, t.index, t.coeff, right);
    return left == right;
  };

  std::size_t total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          total += static_cast<std::size_t>(hom_rank(a, b)) * static_cast<std::size_t>(hom_rank(b, c)) *
                   static_cast<std::size_t>(hom_rank(c, d));
  if (total <= budget) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int f = 0; f < hom_rank(a, b); ++f)
              for (int g = 0; g < hom_rank(b, c); ++g)
                for (int h = 0; h < hom_rank(c, d); ++h)
                  if (!associative(a, b, c, d, f, g, h)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::size_t done = 0;
  while (done < budget) {
    int o[4];
    for (int& x : o) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int rf = hom_rank(o[0], o[1]), rg = hom_rank(o[1], o[2]), rh = hom_rank(o[2], o[3]);
    if (rf == 0 || rg == 0 || rh == 0) continue;
    if (!associative(o[0], o[1], o[2], o[3], static_cast<int>(rng() % static_cast<std::uint64_t>(rf)),
                     static_cast<int>(rng() % static_cast<std::uint64_t>(rg)),
                     static_cast<int>(rng() % static_cast<std::uint64_t>(rh))))
      return false;
    ++done;
  }
  return true;
}

}  // namespace mackey
