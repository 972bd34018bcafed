#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "tubular/errors.hpp"
#include "tubular/vec3.hpp"

namespace tubular {

/// Triangle mesh with boundary-loop decomposition. Boundary edges (edges
/// with exactly one incident triangle) must chain into simple cycles or
/// construction throws.
class TriMesh {
  public:
    TriMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles)
        : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
        const int nv = static_cast<int>(vertices_.size());
        if (nv < 3 || triangles_.empty()) throw StructuralError("TriMesh: empty mesh");
        for (const Vec3& v : vertices_)
            if (!finite(v)) throw StructuralError("TriMesh: non-finite vertex");
        for (auto& t : triangles_) {
            for (int i : t)
                if (i < 0 || i >= nv) throw StructuralError("TriMesh: triangle index out of range");
            if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
                throw StructuralError("TriMesh: repeated vertex in triangle");
            if (triangle_area_of(t) <= 0.0) throw StructuralError("TriMesh: degenerate triangle");
        }
        build_boundary_loops();
        aabb_lo_ = aabb_hi_ = vertices_[0];
        for (const Vec3& v : vertices_) {
            aabb_lo_ = min_componentwise(aabb_lo_, v);
            aabb_hi_ = max_componentwise(aabb_hi_, v);
        }
    }

    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<std::vector<int>>& boundary_loops() const { return boundary_loops_; }

    double triangle_area(std::size_t t) const { return triangle_area_of(triangles_[t]); }

    double total_area() const {
        double a = 0;
        for (std::size_t t = 0; t < triangles_.size(); ++t) a += triangle_area(t);
        return a;
    }

    Vec3 aabb_min() const { return aabb_lo_; }
    Vec3 aabb_max() const { return aabb_hi_; }
    double diameter() const { return dist(aabb_lo_, aabb_hi_); }

    /// True if edge (a,b) lies on the boundary; loop_out gets the loop index.
    bool boundary_edge_loop(int a, int b, int& loop_out) const {
        auto it = boundary_edge_loop_.find(edge_key(a, b));
        if (it == boundary_edge_loop_.end()) return false;
        loop_out = it->second;
        return true;
    }

    bool vertex_loop(int v, int& loop_out) const {
        auto it = boundary_vertex_loop_.find(v);
        if (it == boundary_vertex_loop_.end()) return false;
        loop_out = it->second;
        return true;
    }

    static std::int64_t edge_key(int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }

  private:
    double triangle_area_of(const std::array<int, 3>& t) const {
        return 0.5 * norm(cross(vertices_[t[1]] - vertices_[t[0]], vertices_[t[2]] - vertices_[t[0]]));
    }

    void build_boundary_loops() {
        std::map<std::int64_t, int> edge_count;  // ordered: deterministic walk starts
        for (const auto& t : triangles_)
            for (int e = 0; e < 3; ++e) edge_count[edge_key(t[e], t[(e + 1) % 3])]++;

        // adjacency restricted to boundary edges
        std::map<int, std::vector<int>> nbrs;
        int n_boundary_edges = 0;
        for (auto& [key, count] : edge_count) {
            if (count != 1) continue;
            int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffff);
            nbrs[a].push_back(b);
            nbrs[b].push_back(a);
            ++n_boundary_edges;
        }
        for (auto& [v, adj] : nbrs)
            if (adj.size() != 2)
                throw StructuralError("TriMesh: boundary is not a disjoint union of simple cycles");

        std::unordered_map<int, bool> visited;
        int edges_used = 0;
        for (auto& [start, adj] : nbrs) {
            if (visited[start]) continue;
            std::vector<int> loop;
            int prev = -1, cur = start;
            do {
                loop.push_back(cur);
                visited[cur] = true;
                auto& a = nbrs[cur];
                int next = (a[0] == prev) ? a[1] : a[0];
                prev = cur;
                cur = next;
            } while (cur != start);
            edges_used += static_cast<int>(loop.size());
            int id = static_cast<int>(boundary_loops_.size());
            for (std::size_t i = 0; i < loop.size(); ++i) {
                boundary_vertex_loop_[loop[i]] = id;
                boundary_edge_loop_[edge_key(loop[i], loop[(i + 1) % loop.size()])] = id;
            }
            boundary_loops_.push_back(std::move(loop));
        }
        if (edges_used != n_boundary_edges)
            throw StructuralError("TriMesh: boundary edges left over after loop extraction");
    }

    std::vector<Vec3> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::vector<int>> boundary_loops_;
    std::unordered_map<std::int64_t, int> boundary_edge_loop_;
    std::unordered_map<int, int> boundary_vertex_loop_;
    Vec3 aabb_lo_, aabb_hi_;
};

/// A triangulated annulus: exactly two boundary loops.
struct AnnulusSurface {
    TriMesh mesh;
    double area;

    explicit AnnulusSurface(TriMesh m) : mesh(std::move(m)), area(mesh.total_area()) {
        if (mesh.boundary_loops().size() != 2)
            throw StructuralError("AnnulusSurface: mesh must have exactly two boundary loops, has " +
                                  std::to_string(mesh.boundary_loops().size()));
    }
};

/// Uniform grid over triangle AABBs; gather() returns candidate triangles
/// whose boxes overlap a query box, sorted and deduplicated.
class MeshLocator {
  public:
    explicit MeshLocator(const TriMesh& mesh) : mesh_(&mesh) {
        origin_ = mesh.aabb_min();
        double target_cells = std::cbrt(double(mesh.triangles().size())) + 1.0;
        Vec3 span = mesh.aabb_max() - mesh.aabb_min();
        double max_span = std::max({span.x, span.y, span.z, 1e-12});
        cell_ = max_span / std::max(8.0, target_cells);
        // never let a triangle span too many cells
        double max_tri = 0;
        for (const auto& t : mesh.triangles()) {
            Vec3 lo = tri_lo(t), hi = tri_hi(t);
            max_tri = std::max({max_tri, hi.x - lo.x, hi.y - lo.y, hi.z - lo.z});
        }
        cell_ = std::max(cell_, max_tri);
        for (std::size_t i = 0; i < mesh.triangles().size(); ++i) {
            const auto& t = mesh.triangles()[i];
            insert_box(tri_lo(t), tri_hi(t), static_cast<int>(i));
        }
    }

    void gather(const Vec3& lo, const Vec3& hi, std::vector<int>& out) const {
        out.clear();
        for (std::int64_t i = coord(lo.x, origin_.x); i <= coord(hi.x, origin_.x); ++i)
            for (std::int64_t j = coord(lo.y, origin_.y); j <= coord(hi.y, origin_.y); ++j)
                for (std::int64_t k = coord(lo.z, origin_.z); k <= coord(hi.z, origin_.z); ++k) {
                    auto it = cells_.find(pack(i, j, k));
                    if (it == cells_.end()) continue;
                    out.insert(out.end(), it->second.begin(), it->second.end());
                }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

  private:
    Vec3 tri_lo(const std::array<int, 3>& t) const {
        const auto& v = mesh_->vertices();
        return min_componentwise(v[t[0]], min_componentwise(v[t[1]], v[t[2]]));
    }
    Vec3 tri_hi(const std::array<int, 3>& t) const {
        const auto& v = mesh_->vertices();
        return max_componentwise(v[t[0]], max_componentwise(v[t[1]], v[t[2]]));
    }

    std::int64_t coord(double x, double o) const { return static_cast<std::int64_t>(std::floor((x - o) / cell_)); }
    std::int64_t pack(std::int64_t i, std::int64_t j, std::int64_t k) const {
        return (i * 0x100003LL + j) * 0x100003LL + k;
    }
    void insert_box(const Vec3& lo, const Vec3& hi, int idx) {
        for (std::int64_t i = coord(lo.x, origin_.x); i <= coord(hi.x, origin_.x); ++i)
            for (std::int64_t j = coord(lo.y, origin_.y); j <= coord(hi.y, origin_.y); ++j)
                for (std::int64_t k = coord(lo.z, origin_.z); k <= coord(hi.z, origin_.z); ++k)
                    cells_[pack(i, j, k)].push_back(idx);
    }

    const TriMesh* mesh_;
    Vec3 origin_;
    double cell_ = 1.0;
    std::unordered_map<std::int64_t, std::vector<int>> cells_;
};

}  // namespace tubular
