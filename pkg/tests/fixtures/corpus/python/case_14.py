def f_gold ( arr , n ) :
    for i in range ( n ) :
        arr [ i ] += 5
    s = 0
    for v in arr :
        s += v
    return s


if __name__ == '__main__' :
    print ( f_gold ( [ 5 , 6 , 7 ] , 3 ) )
