/* Client pane for the generated reference site.
 *
 * Loads data/search-table.json and data/symbol-list.json, renders the left
 * symbol list with kind icons, filters it on every keystroke (all query words
 * must appear in the normalized name), and loads symbol pages into the main
 * frame on click or Enter.
 *
 * This file is the compiled form of frontend/src/app.ts; edit there.
 */
"use strict";
(function () {
    var ROW_HEIGHT = 24;
    var WINDOW_THRESHOLD = 2000;
    var OVERSCAN = 10;
    function splitQuery(rawQuery) {
        return rawQuery.toLowerCase().split(/\s+/).filter(function (w) { return w.length > 0; });
    }
    function filterEntries(entries, rawQuery) {
        var words = splitQuery(rawQuery);
        if (words.length === 0) {
            return entries.slice();
        }
        return entries.filter(function (entry) {
            return words.every(function (word) { return entry.norm.indexOf(word) !== -1; });
        });
    }
    function slugBase(id) {
        var hash = id.indexOf("#");
        var article = hash === -1 ? id : id.slice(0, hash);
        var fragment = hash === -1 ? "" : id.slice(hash + 1);
        var mapped = "";
        var lowered = fragment.toLowerCase();
        for (var i = 0; i < lowered.length; i++) {
            var ch = lowered[i];
            mapped += /[a-z0-9_]/.test(ch) ? ch : "_";
        }
        return article + "." + mapped;
    }
    function assignSlugs(ids) {
        var sorted = ids.slice().sort();
        var used = {};
        var slugs = {};
        for (var i = 0; i < sorted.length; i++) {
            var base = slugBase(sorted[i]);
            var slug = base;
            var n = 2;
            while (used[slug]) {
                slug = base + "-" + n;
                n += 1;
            }
            used[slug] = true;
            slugs[sorted[i]] = slug;
        }
        return slugs;
    }
    function pagePath(slugs, id) {
        return "symbols/" + slugs[id] + ".html";
    }
    function fetchJson(url) {
        if (typeof fetch === "function") {
            return fetch(url).then(function (res) {
                if (!res.ok) {
                    throw new Error(url + ": HTTP " + res.status);
                }
                return res.json();
            });
        }
        return new Promise(function (resolve, reject) {
            var xhr = new XMLHttpRequest();
            xhr.open("GET", url);
            xhr.onload = function () {
                try {
                    resolve(JSON.parse(xhr.responseText));
                }
                catch (err) {
                    reject(err);
                }
            };
            xhr.onerror = function () { return reject(new Error("cannot load " + url)); };
            xhr.send();
        });
    }
    function init() {
        var input = document.getElementById("search-input");
        var viewport = document.getElementById("list-viewport");
        var list = document.getElementById("symbol-list");
        var count = document.getElementById("match-count");
        var frame = document.getElementById("main-frame");
        if (!input || !viewport || !list || !count || !frame) {
            return;
        }
        var state = {
            entries: [],
            slugs: {},
            visible: [],
            selectedId: null,
            total: 0,
        };
        function rowFor(entry, index) {
            var li = document.createElement("li");
            li.style.top = (index * ROW_HEIGHT) + "px";
            li.setAttribute("role", "option");
            li.setAttribute("tabindex", "0");
            li.setAttribute("data-id", entry.id);
            li.setAttribute("aria-selected", entry.id === state.selectedId ? "true" : "false");
            var icon = document.createElement("img");
            icon.className = "icon";
            icon.src = "assets/icons/" + entry.kind + ".svg";
            icon.alt = entry.kind;
            li.appendChild(icon);
            li.appendChild(document.createTextNode(entry.name));
            var tag = document.createElement("span");
            tag.className = "article-tag";
            tag.textContent = entry.article;
            li.appendChild(tag);
            li.addEventListener("click", function () { return select(entry.id); });
            li.addEventListener("keydown", function (event) {
                if (event.key === "Enter") {
                    event.preventDefault();
                    select(entry.id);
                }
            });
            return li;
        }
        function renderWindow() {
            var n = state.visible.length;
            list.style.height = (n * ROW_HEIGHT) + "px";
            while (list.firstChild) {
                list.removeChild(list.firstChild);
            }
            if (n === 0) {
                var empty = document.createElement("li");
                empty.className = "no-matches";
                empty.style.top = "0px";
                empty.textContent = "No matches";
                list.style.height = ROW_HEIGHT + "px";
                list.appendChild(empty);
                return;
            }
            var first = 0;
            var last = n;
            if (n > WINDOW_THRESHOLD) {
                var top = viewport.scrollTop;
                var height = viewport.clientHeight || 600;
                first = Math.max(0, Math.floor(top / ROW_HEIGHT) - OVERSCAN);
                last = Math.min(n, Math.ceil((top + height) / ROW_HEIGHT) + OVERSCAN);
            }
            for (var i = first; i < last; i++) {
                list.appendChild(rowFor(state.visible[i], i));
            }
        }
        function updateCount() {
            count.textContent = state.visible.length + " of " + state.total + " symbols";
        }
        function applyQuery(rawQuery) {
            state.visible = filterEntries(state.entries, rawQuery);
            viewport.scrollTop = 0;
            renderWindow();
            updateCount();
        }
        function navigate(url) {
            try {
                if (frame.contentWindow) {
                    frame.contentWindow.location.replace(url);
                    return;
                }
            }
            catch (err) {
                /* cross-origin or detached frame: fall back to the attribute */
            }
            frame.setAttribute("src", url);
        }
        function select(id) {
            if (id === state.selectedId) {
                return;
            }
            state.selectedId = id;
            var rows = list.children;
            for (var i = 0; i < rows.length; i++) {
                var row = rows[i];
                row.setAttribute("aria-selected", row.getAttribute("data-id") === id ? "true" : "false");
            }
            var url = pagePath(state.slugs, id);
            if (typeof fetch === "function" && window.location.protocol !== "file:") {
                fetch(url, { method: "HEAD" })
                    .then(function (res) { return navigate(res.ok ? url : "404.html"); })
                    .catch(function () { return navigate(url); });
            }
            else {
                navigate(url);
            }
        }
        Promise.all([
            fetchJson("data/search-table.json"),
            fetchJson("data/symbol-list.json"),
        ]).then(function (loaded) {
            var table = loaded[0];
            var symbolList = loaded[1];
            state.entries = table.entries;
            state.total = symbolList.entries.length;
            if (state.total !== state.entries.length) {
                // Published files disagree; trust the search table.
                state.total = state.entries.length;
            }
            state.slugs = assignSlugs(state.entries.map(function (e) { return e.id; }));
            applyQuery(input.value);
            input.addEventListener("input", function () { return applyQuery(input.value); });
            viewport.addEventListener("scroll", function () {
                if (state.visible.length > WINDOW_THRESHOLD) {
                    renderWindow();
                }
            });
        }).catch(function (err) {
            count.textContent = "failed to load symbol data";
            if (typeof console !== "undefined") {
                console.error(err);
            }
        });
    }
    if (document.readyState === "loading") {
        document.addEventListener("DOMContentLoaded", init);
    }
    else {
        init();
    }
})();
