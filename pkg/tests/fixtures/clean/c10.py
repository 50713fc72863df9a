def f_gold ( arr , n , k ) :
    window = sum ( arr [ : k ] )
    best = window
    for i in range ( k , n ) :
        window += arr [ i ] - arr [ i - k ]
        best = max ( best , window )
    return best
