def f_gold ( n ) :
    a = 0
    b = 1
    for i in range ( n ) :
        c = a + b
        a = b
        b = c
    return a


if __name__ == '__main__' :
    print ( f_gold ( 10 ) )
