"""A short tour: Farey chains, a twist word, and a few verdicts."""
from obcontact.classify import classify_pa
from obcontact.farey import farey_path, fmt, neg_cfrac
from obcontact.mcg import parse_word, project_word

for p, q in [(10, 7), (14, 5), (14, 3)]:
    path = farey_path(p, q)
    print("-%d/%d = %s  chain %s" % (p, q, neg_cfrac(p, q), " > ".join(fmt(s) for s in path.steps)))

M = project_word(parse_word("b:1,e:1"))
print("b e ->", M.entries())
for m in [(17, 6, 14, 5), (19, 4, 14, 3), (11, 4, 8, 3), (13, 8, 8, 5)]:
    v = classify_pa(m, (1, 1, 1, 1))
    print(m, v.tag, v.witness)
