def f_gold ( a ) :
    s = 0
    for i in range ( len ( a ) ) :
        s += a [ i ] * 2
    return s


if __name__ == '__main__' :
    print ( f_gold ( [ 1 , 2 , 3 ] ) )
