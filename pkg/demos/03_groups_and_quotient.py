"""The imprimitive reflection groups G(m,p,n) and the quotient onto Z/p."""

from collections import Counter

from galoisweyl import GroupDescriptor, group_enumerate, quotient_image

D = GroupDescriptor.G(4, 1, 2)
elems = group_enumerate(D)
print(D, "order", len(elems))

# G(4,2,2) sits inside as the kernel of the exponent-sum map mod 2
images = Counter(quotient_image(g, 4, 2) for g in elems)
print("fibres of G(4,1,2) -> Z/2:", dict(images))
kernel = {g for g in elems if quotient_image(g, 4, 2) == 0}
print("kernel == G(4,2,2):", kernel == set(group_enumerate(GroupDescriptor.G(4, 2, 2))))

for m in range(1, 5):
    row = [len(group_enumerate(GroupDescriptor.G(m, p, 3))) for p in range(1, m + 1) if m % p == 0]
    print(f"m={m}, n=3, p | m:", row)
